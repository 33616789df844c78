#include <cstdio>

int main() {
    std::puts("skyshift: placeholder");
    return 0;
}
