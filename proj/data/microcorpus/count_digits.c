int count_digits(int n) {
  int count = 1;
  if (n < 0)
    n = -n;
  while (n >= 10) {
    n /= 10;
    ++count;
  }
  return count;
}
