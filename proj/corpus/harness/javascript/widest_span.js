"use strict";

@@FUNCTION@@

function check(ok, code) {
  if (!ok) process.exit(code);
}

check(@FN@([1, 4, 5, 11]) === 6, 1);
check(@FN@([3]) === 0, 2);
