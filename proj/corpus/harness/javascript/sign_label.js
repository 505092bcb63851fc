"use strict";

@@FUNCTION@@

function check(ok, code) {
  if (!ok) process.exit(code);
}

check(JSON.stringify(@FN@([-1, 0, 3])) === JSON.stringify(["neg", "pos", "pos"]), 1);
