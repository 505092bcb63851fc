#include <math.h>
#include <stddef.h>
#include <stdio.h>
#include <string.h>

@@FUNCTION@@

int main(void) {
    int expect[] = {0, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 1};
    for (int v = 0; v < 12; v++)
        if (@FN@(v) != expect[v]) return 1;
    if (@FN@(97) != 1 || @FN@(91) != 0) return 2;
    return 0;
}
