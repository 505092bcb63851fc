#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

@@FUNCTION@@

int main() {
    if (std::fabs(@FN@({1.0, 2.0, 4.5}) - 2.5) > 1e-12) return 1;
    if (@FN@({}) != 0.0) return 2;
    return 0;
}
