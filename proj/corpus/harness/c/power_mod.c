#include <math.h>
#include <stddef.h>
#include <stdio.h>
#include <string.h>

@@FUNCTION@@

int main(void) {
    if (@FN@(2, 10, 1000) != 24) return 1;
    if (@FN@(3, 0, 7) != 1) return 2;
    if (@FN@(5, 3, 13) != 8) return 3;
    return 0;
}
