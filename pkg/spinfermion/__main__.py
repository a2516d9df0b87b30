from spinfermion.main import main

main()
