#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

@@FUNCTION@@

int main() {
    std::vector<std::string> names{"ada", "bob", "cy", "bob"};
    if (@FN@(names, "bob") != 1) return 1;
    if (@FN@(names, "zed") != -1) return 2;
    return 0;
}
