function countSpaces(text) {
  let spaces = 0;
  let pos = 0;
  while (pos < text.length) {
    if (text[pos] === " ")
      spaces++;
    pos++;
  }
  return spaces;
}
