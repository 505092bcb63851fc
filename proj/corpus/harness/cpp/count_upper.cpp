#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

@@FUNCTION@@

int main() {
    if (@FN@("Hello World ABC") != 5) return 1;
    if (@FN@("lower") != 0) return 2;
    return 0;
}
