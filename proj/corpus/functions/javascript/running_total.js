function runningTotal(amounts) {
  const totals = [];
  let sum = 0;
  let idx = 0;
  while (idx < amounts.length) {
    sum += amounts[idx];
    totals.push(sum);
    idx++;
  }
  return totals;
}
