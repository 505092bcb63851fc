function signLabels(values) {
  const labels = [];
  for (let v = 0; v < values.length; v++) {
    if (values[v] < 0) {
      labels.push("neg");
    } else {
      labels.push("pos");
    }
  }
  return labels;
}
