int main(void) {
  static const int inputs[] = {0, 1, 2, 255, 256, 65535, -1, 123456789, -987654};
  for (size_t k = 0; k < sizeof(inputs) / sizeof(inputs[0]); k++) {
    printf("%d\n", fnv_checksum(inputs[k]));
  }
  return 0;
}
