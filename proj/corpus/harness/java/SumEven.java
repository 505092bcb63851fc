import java.util.*;

class Main {
@@FUNCTION@@

    static void check(boolean ok, int code) {
        if (!ok) System.exit(code);
    }

    public static void main(String[] args) {
        check(@FN@(new int[] {1, 2, 3, 4, -6}) == 0, 1);
        check(@FN@(new int[] {}) == 0, 2);
        check(@FN@(new int[] {8, 5}) == 8, 3);
    }
}
