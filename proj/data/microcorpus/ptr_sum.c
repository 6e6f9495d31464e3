int ptr_sum(int n) {
  int values[16];
  int *p = values;
  int s = 0;
  int i;
  for (i = 0; i < 16; i++)
    values[i] = i * 3 - 7;
  while (p < values + n) {
    s += *p;
    p++;
  }
  return s;
}
