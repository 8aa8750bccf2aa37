from bpfact.cli import main

main()
