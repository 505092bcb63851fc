"use strict";

@@FUNCTION@@

function check(ok, code) {
  if (!ok) process.exit(code);
}

check(@FN@([2, 4, 9]) === 5, 1);
check(@FN@([]) === 0, 2);
