#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

@@FUNCTION@@

int main() {
    if (@FN@(1) != 0 || @FN@(6) != 8 || @FN@(27) != 111) return 1;
    return 0;
}
