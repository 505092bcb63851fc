function sumSquares(list) {
  let acc = 0;
  for (let i = 0; i < list.length; i++) {
    acc += list[i]*list[i];
  }
  return acc;
}
