# puts the checkout on sys.path so tests run without an editable install
