from wspec.cli import main

main()
