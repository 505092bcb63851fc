function repeatChar(symbol, count) {
  let line = "";
  for (let n = 0; n < count; n++) {
    line = line + symbol;
  }
  const result = line;
  return result;
}
