function countInRange(scores, minScore, maxScore) {
  let matched = 0;
  for (let k = 0; k < scores.length; k++) {
    const score = scores[k];
    if (score >= minScore && score <= maxScore)
      matched++;
  }
  return matched;
}
