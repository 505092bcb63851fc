#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

@@FUNCTION@@

int main() {
    std::vector<int> v{-3, 4, 12, 7};
    @FN@(v, 0, 10);
    if (v != std::vector<int>{0, 4, 10, 7}) return 1;
    return 0;
}
