#include <math.h>
#include <stddef.h>
#include <stdio.h>
#include <string.h>

@@FUNCTION@@

int main(void) {
    if (@FN@(48u, 18u) != 6u) return 1;
    if (@FN@(7u, 0u) != 7u) return 2;
    if (@FN@(17u, 5u) != 1u) return 3;
    return 0;
}
