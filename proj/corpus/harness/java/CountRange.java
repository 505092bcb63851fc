import java.util.*;

class Main {
@@FUNCTION@@

    static void check(boolean ok, int code) {
        if (!ok) System.exit(code);
    }

    public static void main(String[] args) {
        check(@FN@(new int[] {1, 5, 9, 10, 12}, 5, 10) == 2, 1);
        check(@FN@(new int[] {}, 0, 1) == 0, 2);
    }
}
