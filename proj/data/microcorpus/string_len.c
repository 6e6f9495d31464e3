int string_len(int offset) {
  const char *text = "semantic preserving";
  int len = 0;
  const char *p = text + offset;
  while (*p) {
    len++;
    p++;
  }
  return len;
}
