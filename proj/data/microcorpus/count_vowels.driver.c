int main(void) {
  static const int inputs[] = {0, 4, 8, 12, 16, 20, 24, 28, 32, 36};
  for (size_t k = 0; k < sizeof(inputs) / sizeof(inputs[0]); k++) {
    printf("%d\n", count_vowels(inputs[k]));
  }
  return 0;
}
