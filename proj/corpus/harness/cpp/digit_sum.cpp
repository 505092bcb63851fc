#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

@@FUNCTION@@

int main() {
    if (@FN@(0) != 0 || @FN@(1234) != 10 || @FN@(-907) != 16) return 1;
    return 0;
}
