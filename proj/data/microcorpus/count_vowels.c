int count_vowels(int start) {
  const char *text = "the quick brown fox jumps over a lazy dog";
  int count = 0;
  int i;
  for (i = start; text[i] != '\0'; i++) {
    switch (text[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        count++;
        break;
      default:
        break;
    }
  }
  return count;
}
