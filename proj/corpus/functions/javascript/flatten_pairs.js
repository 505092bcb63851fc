function flattenPairs(pairs) {
  const flat=[];
  for (let p = 0; p < pairs.length; p++) {
    flat.push(pairs[p][0]);
    flat.push(pairs[p][1]);
  }
  return flat;
}
