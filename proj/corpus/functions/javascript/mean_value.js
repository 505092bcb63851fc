function meanValue(samples) {
  if (samples.length === 0)
    return 0;
  let total=0;
  for (let s = 0; s < samples.length; s++) {
    total += samples[s];
  }
  return total / samples.length;
}
