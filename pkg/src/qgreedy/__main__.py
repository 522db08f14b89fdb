from qgreedy.cli import main

main()
