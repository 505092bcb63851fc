#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

@@FUNCTION@@

int main() {
    if (!@FN@("racecar") || !@FN@("abba") || !@FN@("")) return 1;
    if (@FN@("abca") || @FN@("ab")) return 2;
    return 0;
}
