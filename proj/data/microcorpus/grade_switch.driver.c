int main(void) {
  static const int inputs[] = {100, 95, 90, 85, 79, 70, 65, 10, 0};
  for (size_t k = 0; k < sizeof(inputs) / sizeof(inputs[0]); k++) {
    printf("%d\n", grade_switch(inputs[k]));
  }
  return 0;
}
