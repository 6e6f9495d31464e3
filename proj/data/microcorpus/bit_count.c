int bit_count(int v) {
  unsigned int x = (unsigned int)v;
  int count;
  for (count = 0; x != 0; x >>= 1) {
    if (x & 1u)
      count++;
  }
  return count;
}
