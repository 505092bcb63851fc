import java.util.*;

class Main {
@@FUNCTION@@

    static void check(boolean ok, int code) {
        if (!ok) System.exit(code);
    }

    public static void main(String[] args) {
        check(@FN@("hello big world").equals("Hello Big World"), 1);
        check(@FN@("").equals(""), 2);
    }
}
