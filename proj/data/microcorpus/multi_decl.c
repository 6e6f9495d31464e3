int multi_decl(int x) {
  int a = x, b = 2 * x, c;
  long d = 3, e;
  c = a + b;
  e = d * c;
  return (int)(e - a);
}
