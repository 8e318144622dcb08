from triuniv.cli import main

main()
