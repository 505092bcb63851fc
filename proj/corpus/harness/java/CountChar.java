import java.util.*;

class Main {
@@FUNCTION@@

    static void check(boolean ok, int code) {
        if (!ok) System.exit(code);
    }

    public static void main(String[] args) {
        check(@FN@("banana", 'a') == 3, 1);
        check(@FN@("", 'x') == 0, 2);
    }
}
