"use strict";

@@FUNCTION@@

function check(ok, code) {
  if (!ok) process.exit(code);
}

check(@FN@([1, 2, 3]) === 14, 1);
check(@FN@([]) === 0, 2);
