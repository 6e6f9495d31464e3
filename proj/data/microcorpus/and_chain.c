int and_chain(int a, int b) {
  int hits = 0;
  if (a > 0 && b > 0 && a != b)
    hits++;
  if ((a % 2 == 0 && b % 2 == 0)) {
    hits += 10;
  }
  if (a < b && b < 8) {
    hits += 100;
  } else {
    hits += 1000;
  }
  return hits;
}
