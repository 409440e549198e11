#include <iostream>

int main() {
    std::cout << "reglab (placeholder)\n";
    return 0;
}
