function lastIndexOf(items, needle) {
  let where=-1;
  for (let q = items.length - 1; q >= 0; q--) {
    if (where === -1 && items[q] === needle) {
      where = q;
    }
  }
  return where;
}
