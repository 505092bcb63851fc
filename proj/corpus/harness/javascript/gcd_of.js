"use strict";

@@FUNCTION@@

function check(ok, code) {
  if (!ok) process.exit(code);
}

check(@FN@(84, 36) === 12, 1);
check(@FN@(-15, 10) === 5, 2);
check(@FN@(9, 0) === 9, 3);
