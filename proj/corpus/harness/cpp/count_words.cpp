#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

@@FUNCTION@@

int main() {
    if (@FN@("the quick  brown fox") != 4) return 1;
    if (@FN@("   ") != 0) return 2;
    if (@FN@("solo") != 1) return 3;
    return 0;
}
