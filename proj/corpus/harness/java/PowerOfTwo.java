import java.util.*;

class Main {
@@FUNCTION@@

    static void check(boolean ok, int code) {
        if (!ok) System.exit(code);
    }

    public static void main(String[] args) {
        check(@FN@(1) && @FN@(64) && @FN@(1024), 1);
        check(!@FN@(0) && !@FN@(12) && !@FN@(-8), 2);
    }
}
