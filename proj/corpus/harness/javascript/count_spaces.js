"use strict";

@@FUNCTION@@

function check(ok, code) {
  if (!ok) process.exit(code);
}

check(@FN@("a b  c") === 3, 1);
check(@FN@("") === 0, 2);
