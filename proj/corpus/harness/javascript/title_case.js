"use strict";

@@FUNCTION@@

function check(ok, code) {
  if (!ok) process.exit(code);
}

check(@FN@("the cat  sat") === "The Cat  Sat", 1);
check(@FN@("") === "", 2);
