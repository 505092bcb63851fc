#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

@@FUNCTION@@

int main() {
    if (@FN@(0) != 0 || @FN@(4) != 10 || @FN@(100) != 5050) return 1;
    return 0;
}
