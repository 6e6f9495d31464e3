int sort3(int a, int b) {
  int c = a ^ b, t;
  if (a > b) {
    t = a; a = b; b = t;
  }
  if (b > c) {
    t = b; b = c; c = t;
  }
  if (a > b) {
    t = a;
    a = b;
    b = t;
  }
  return a * 10000 + b * 100 + c;
}
