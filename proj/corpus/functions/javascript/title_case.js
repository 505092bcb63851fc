function titleCase(sentence) {
  const words = sentence.split(" ");
  for (let w = 0; w<words.length; w++) {
    if (words[w].length > 0)
      words[w] = words[w][0].toUpperCase() + words[w].slice(1);
  }
  return words.join(" ");
}
