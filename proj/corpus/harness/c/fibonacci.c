#include <math.h>
#include <stddef.h>
#include <stdio.h>
#include <string.h>

@@FUNCTION@@

int main(void) {
    if (@FN@(0) != 0 || @FN@(1) != 1 || @FN@(10) != 55) return 1;
    if (@FN@(40) != 102334155L) return 2;
    return 0;
}
