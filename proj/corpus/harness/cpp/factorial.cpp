#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

@@FUNCTION@@

int main() {
    if (@FN@(0) != 1ULL || @FN@(1) != 1ULL || @FN@(5) != 120ULL) return 1;
    if (@FN@(20) != 2432902008176640000ULL) return 2;
    return 0;
}
