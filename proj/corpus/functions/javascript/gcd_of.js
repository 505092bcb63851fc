function gcdOf(first, second) {
  let a = Math.abs(first);
  let b = Math.abs(second);
  while (b !== 0) {
    const r = a%b;
    a = b;
    b = r;
  }
  return a;
}
