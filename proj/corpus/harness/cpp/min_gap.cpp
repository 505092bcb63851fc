#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

@@FUNCTION@@

int main() {
    if (@FN@({1, 4, 6, 13}) != 2) return 1;
    if (@FN@({5}) != (1 << 30)) return 2;
    return 0;
}
