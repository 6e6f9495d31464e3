int fnv_checksum(int seed) {
  unsigned int h = 2166136261u;
  unsigned int x = (unsigned int)seed;
  int i;
  for (i = 0; i < 4; i++) {
    h ^= x & 0xffu;
    h *= 16777619u;
    x >>= 8;
  }
  return (int)(h % 1000003u);
}
