int matrix_trace(int n) {
  int m[4][4];
  int i, j;
  int trace = 0;
  for (i = 0; i < 4; i++)
    for (j = 0; j < 4; j++)
      m[i][j] = (i + 1) * (j + n);
  for (i = 0; i < 4; i++)
    trace += m[i][i];
  return trace;
}
