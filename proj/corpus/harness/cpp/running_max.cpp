#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

@@FUNCTION@@

int main() {
    if (@FN@({3, 9, 2, 9, 4}) != 9) return 1;
    if (@FN@({-5}) != -5) return 2;
    if (@FN@({}) != 0) return 3;
    return 0;
}
