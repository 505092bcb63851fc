function widestSpan(points) {
  let span = 0;
  for (let j = 1; j < points.length; j++) {
    const delta = points[j] - points[j - 1];
    span = Math.max(span, delta);
  }
  return span;
}
