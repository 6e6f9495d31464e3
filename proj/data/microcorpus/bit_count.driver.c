int main(void) {
  static const int inputs[] = {0, 1, 2, 3, 255, -1, -256, 1048576, 12345};
  for (size_t k = 0; k < sizeof(inputs) / sizeof(inputs[0]); k++) {
    printf("%d\n", bit_count(inputs[k]));
  }
  return 0;
}
