import java.util.*;

class Main {
@@FUNCTION@@

    static void check(boolean ok, int code) {
        if (!ok) System.exit(code);
    }

    public static void main(String[] args) {
        check(Math.abs(@FN@(4) - 25.0 / 12.0) < 1e-12, 1);
        check(@FN@(0) == 0.0, 2);
    }
}
