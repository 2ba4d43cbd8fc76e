// placeholder so the target configures; filled in below
int main() { return 0; }
