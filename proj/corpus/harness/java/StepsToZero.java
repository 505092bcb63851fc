import java.util.*;

class Main {
@@FUNCTION@@

    static void check(boolean ok, int code) {
        if (!ok) System.exit(code);
    }

    public static void main(String[] args) {
        check(@FN@(14) == 6 && @FN@(0) == 0 && @FN@(8) == 4, 1);
    }
}
