"use strict";

@@FUNCTION@@

function check(ok, code) {
  if (!ok) process.exit(code);
}

check(@FN@("*", 4) === "****", 1);
check(@FN@("-", 0) === "", 2);
