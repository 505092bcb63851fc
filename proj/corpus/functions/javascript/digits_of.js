function digitsOf(num) {
  const digitList = [];
  let remaining = num;
  do {
    digitList.unshift(remaining%10);
    remaining = Math.floor(remaining / 10);
  } while (remaining > 0);
  return digitList;
}
