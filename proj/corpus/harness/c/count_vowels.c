#include <math.h>
#include <stddef.h>
#include <stdio.h>
#include <string.h>

@@FUNCTION@@

int main(void) {
    if (@FN@("education") != 5) return 1;
    if (@FN@("rhythm") != 0) return 2;
    if (@FN@("") != 0) return 3;
    return 0;
}
