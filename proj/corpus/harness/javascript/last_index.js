"use strict";

@@FUNCTION@@

function check(ok, code) {
  if (!ok) process.exit(code);
}

check(@FN@([4, 2, 4, 1], 4) === 2, 1);
check(@FN@([4, 2], 9) === -1, 2);
