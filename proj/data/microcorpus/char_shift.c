int char_shift(int k) {
  char buf[8];
  unsigned char c = 'a';
  int i;
  int sum = 0;
  for (i = 0; i < 7; ++i) {
    buf[i] = (char)(c + (i * k) % 26);
  }
  buf[7] = 0;
  i = 0;
  while (buf[i]) {
    sum = sum * 3 + (buf[i] - 'a');
    i++;
  }
  return sum % 100003;
}
