"use strict";

@@FUNCTION@@

function check(ok, code) {
  if (!ok) process.exit(code);
}

check(JSON.stringify(@FN@(4072)) === "[4,0,7,2]", 1);
check(JSON.stringify(@FN@(0)) === "[0]", 2);
