int sum_while(int n) {
  int i = 0;
  int s = 0;
  while (i < n) {
    s += i * i;
    i++;
  }
  return s;
}
