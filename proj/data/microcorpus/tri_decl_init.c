int tri_decl_init(int n) {
  int acc = 0;
  for (int i = 1; i <= n; i++)
    acc += i;
  return acc;
}
