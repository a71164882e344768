from lie2weyl.main import main

main()
