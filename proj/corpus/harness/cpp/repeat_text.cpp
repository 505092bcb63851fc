#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

@@FUNCTION@@

int main() {
    if (@FN@("ab", 3) != "ababab") return 1;
    if (!@FN@("x", 0).empty()) return 2;
    return 0;
}
